/* sum from 1 to n */
int main()
{
    int len;
    int ans = 0;
    scanf("%d", &len);
    int p;
    p = 1;
    while (p < len + 1) {
        if (p % 2 == 0) ans = ans + p;
        p++;
    }
    printf("%lld\n", ans);
    return 0;
}
