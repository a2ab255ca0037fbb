// sum from 1 to n
int main()
{
    int n;
    long long ans = 0;
    scanf("%d", &n);
    int i;
    i = 1;
    while (i < n + 1) {
        ans += (long long)i * i;
        i++;
    }
    printf("%lld\n", ans);
    return 0;
}
