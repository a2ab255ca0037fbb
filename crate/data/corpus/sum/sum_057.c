int main()
{
    int n;
    long long sum = 0;
    scanf("%d", &n);
    int k;
    for (k = 1; k < n + 1; k++) {
        sum += k;
    }
    printf("%lld\n", sum);
    return 0;
}
