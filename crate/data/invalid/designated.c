/* expect 2:14 */
int a[3] = { [1] = 2 };
