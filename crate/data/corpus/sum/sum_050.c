int main()
{
    int m, total = 0, r;
    scanf("%d", &m);
    if (m < 0)
        m = -m;
    while (m > 0) {
        r = m % 10;
        total += r;
        m /= 10;
    }
    printf("%d\n", total);
    return 0;
}
