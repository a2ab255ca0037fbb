/* expect 2:9 */
int n = 09;
