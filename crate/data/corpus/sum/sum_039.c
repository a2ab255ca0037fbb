int main()
{
    int num;
    long long ans = 0;
    scanf("%d", &num);
    int p;
    for (p = 1; p < num + 1; p++) {
        ans += p;
    }
    printf("%lld\n", ans);
    return 0;
}
