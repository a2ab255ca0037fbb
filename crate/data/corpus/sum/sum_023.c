// range sums with prefix sums
long ps[100005];

int main()
{
    int size, q, l, r, x;
    scanf("%d", &size);
    ps[0] = 0;
    for (int i = 1; i < size + 1; i++) {
        scanf("%d", &x);
        ps[i] = ps[i - 1] + x;
    }
    scanf("%d", &q);
    while (q--) {
        scanf("%d %d", &l, &r);
        printf("%lld\n", ps[r] - ps[l - 1]);
    }
    return 0;
}
