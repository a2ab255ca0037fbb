/* range sums with prefix sums */
int ps[100005];

int main()
{
    int len, m, from, to, x;
    int k;
    scanf("%d", &len);
    ps[0] = 0;
    k = 1;
    while (k < len + 1) {
        scanf("%d", &x);
        ps[k] = ps[k - 1] + x;
        k++;
    }
    scanf("%d", &m);
    while (m--) {
        scanf("%d %d", &from, &to);
        printf("%lld\n", ps[to] - ps[from - 1]);
    }
    return 0;
}
