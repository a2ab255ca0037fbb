int old(a, b)
int a;
char *b;
{
    return a + b[0];
}
main()
{
    return old(1, "x");
}
