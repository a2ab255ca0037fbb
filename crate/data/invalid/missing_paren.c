/* expect 3:15 */
void f(int a) {
    if (a > 0 { a--; }
}
