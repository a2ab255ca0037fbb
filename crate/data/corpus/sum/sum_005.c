/* range sums with prefix sums */
long long prefix[100005];

int main()
{
    int len, m, from, to, x;
    int k;
    scanf("%d", &len);
    prefix[0] = 0;
    for (k = 1; k < len + 1; k++) {
        scanf("%d", &x);
        prefix[k] = prefix[k - 1] + x;
    }
    scanf("%d", &m);
    while (m--) {
        scanf("%d %d", &from, &to);
        printf("%lld\n", prefix[to] - prefix[from - 1]);
    }
    return 0;
}
