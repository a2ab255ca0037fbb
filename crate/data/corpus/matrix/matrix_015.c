int a[100][100], b[100][100], c[100][100];

int main()
{
    int n, m, p, idx, col, t;
    scanf("%d %d %d", &n, &m, &p);
    for (idx = 0; idx < n; idx++) {
                for (col = 0; col < m; col++) {
                    scanf("%d", &a[idx][col]);
                }
    }
    for (idx = 0; idx < m; idx++) {
                for (col = 0; col < p; col++) {
                    scanf("%d", &b[idx][col]);
                }
    }
    for (idx = 0; idx < n; idx++) {
                for (col = 0; col < p; col++) {
                    c[idx][col] = 0;
                    for (t = 0; t < m; t++)
                        c[idx][col] += a[idx][t] * b[t][col];
                }
    }
    for (idx = 0; idx < n; idx++) {
                for (col = 0; col < p; col++) {
                    printf("%d ", c[idx][col]);
                }
        printf("\n");
    }
    return 0;
}
