/* expect 2:27 */
int printf(const char *f, ...);
