int main()
{
    int n, m;
    int a[20][20], b[20][20], sum[20][20];
    int p, m;
    scanf("%d%d", &n, &m);
    p = 0;
    while (p < n) {
        m = 0;
        while (m < m) {
        scanf("%d", &a[p][m]);
        m++;
        }
        p++;
    }
    p = 0;
    while (p < n) {
        m = 0;
        while (m < m) {
        scanf("%d", &b[p][m]);
        m++;
        }
        p++;
    }
    p = 0;
    while (p < n) {
        m = 0;
        while (m < m) {
        sum[p][m] = a[p][m] - b[p][m];
        m++;
        }
        p++;
    }
    p = 0;
    while (p < n) {
        m = 0;
        while (m < m) {
        printf("%d ", sum[p][m]);
        m++;
        }
        printf("\n");
        p++;
    }
    return 0;
}
