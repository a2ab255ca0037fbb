long long pre[100005];

int main()
{
    int size, m, from, to, x;
    scanf("%d", &size);
    pre[0] = 0;
    for (int k = 1; k < size + 1; k++) {
        scanf("%d", &x);
        pre[k] = pre[k - 1] + x;
    }
    scanf("%d", &m);
    while (m--) {
        scanf("%d %d", &from, &to);
        printf("%lld\n", pre[to] - pre[from - 1]);
    }
    return 0;
}
