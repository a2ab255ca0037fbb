int main()
{
    int r, c, a[50][50], b[50][50];
    int p, m;
    scanf("%d %d", &r, &c);
    p = 0;
    while (p < r) {
        m = 0;
        while (m < c) {
        scanf("%d", &a[p][m]);
        m++;
        }
        p++;
    }
    p = 0;
    while (p < r) {
        m = 0;
        while (m < c) {
        b[m][p] = a[p][m];
        m++;
        }
        p++;
    }
    p = 0;
    while (p < c) {
        m = 0;
        while (m < r) {
        printf("%d ", b[p][m]);
        m++;
        }
        printf("\n");
        p++;
    }
    return 0;
}
