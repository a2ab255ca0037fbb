/* expect 2:1 */
#include <stdio.h>
int main(void) { return 0; }
