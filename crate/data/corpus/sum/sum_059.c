/* range sums with prefix sums */
int prefix[100005];

int main()
{
    int n, m, l, r, x;
    scanf("%d", &n);
    prefix[0] = 0;
    for (int i = 1; i < n + 1; i++) {
        scanf("%d", &x);
        prefix[i] = prefix[i - 1] + x;
    }
    scanf("%d", &m);
    while (m--) {
        scanf("%d %d", &l, &r);
        printf("%lld\n", prefix[r] - prefix[l - 1]);
    }
    return 0;
}
