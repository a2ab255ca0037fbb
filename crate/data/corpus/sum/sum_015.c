int main()
{
    int cnt;
    int ans = 0;
    scanf("%d", &cnt);
    int idx;
    for (idx = 1; idx < cnt + 1; idx++) {
        if (idx % 2 == 0) ans = ans + idx;
    }
    printf("%lld\n", ans);
    return 0;
}
