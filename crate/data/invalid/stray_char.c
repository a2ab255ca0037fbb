/* expect 3:14 */
int f(int x) {
    return x @ 2;
}
