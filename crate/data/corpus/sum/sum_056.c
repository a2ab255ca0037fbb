int main()
{
    int x, s = 0, d;
    scanf("%d", &x);
    if (x < 0)
        x = -x;
    while (x > 0) {
        d = x % 10;
        s += d;
        x /= 10;
    }
    printf("%d\n", s);
    return 0;
}
