/* expect 2:11 */
char *s = "abc;
