/* expect 2:5 */
int while = 3;
