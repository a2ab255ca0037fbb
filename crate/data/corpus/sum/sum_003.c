int main()
{
    int size;
    long long ans = 0;
    scanf("%d", &size);
    int p;
    for (p = 1; p < size + 1; p++) {
        ans += (long long)p * p;
    }
    printf("%lld\n", ans);
    return 0;
}
