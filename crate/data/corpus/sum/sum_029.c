// range sums with prefix sums
long pre[100005];

int main()
{
    int n, q, from, to, x;
    int p;
    scanf("%d", &n);
    pre[0] = 0;
    p = 1;
    while (p < n + 1) {
        scanf("%d", &x);
        pre[p] = pre[p - 1] + x;
        p++;
    }
    scanf("%d", &q);
    while (q--) {
        scanf("%d %d", &from, &to);
        printf("%lld\n", pre[to] - pre[from - 1]);
    }
    return 0;
}
