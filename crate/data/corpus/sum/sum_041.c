long long ps[100005];

int main()
{
    int size, m, from, to, x;
    int i;
    scanf("%d", &size);
    ps[0] = 0;
    for (i = 1; i < size + 1; i++) {
        scanf("%d", &x);
        ps[i] = ps[i - 1] + x;
    }
    scanf("%d", &m);
    while (m--) {
        scanf("%d %d", &from, &to);
        printf("%lld\n", ps[to] - ps[from - 1]);
    }
    return 0;
}
