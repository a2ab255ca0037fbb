int main()
{
    int n;
    int s = 0;
    scanf("%d", &n);
    for (int idx = 1; idx < n + 1; idx++) {
        if (idx % 2 == 0) s = s + idx;
    }
    printf("%lld\n", s);
    return 0;
}
