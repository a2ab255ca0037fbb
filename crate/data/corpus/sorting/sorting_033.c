int cnt[1001];

int main()
{
    int n, c;
    int p, m;
    scanf("%d", &n);
    p = 0;
    while (p < n) {
        scanf("%d", &c);
        cnt[c]++;
        p++;
    }
    c = 0;
    while (c < 1001) {
        m = 0;
        while (m < cnt[c]) {
        printf("%d ", c);
        m++;
        }
        c++;
    }
    printf("\n");
    return 0;
}
