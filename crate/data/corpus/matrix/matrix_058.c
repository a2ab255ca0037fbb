int a[100][100], b[100][100], c[100][100];

int main()
{
    int n, m, p, idx, j, k;
    scanf("%d %d %d", &n, &m, &p);
    for (idx = 0; idx < n; idx++) {
                for (j = 0; j < m; j++)
                    scanf("%d", &a[idx][j]);
    }
    for (idx = 0; idx < m; idx++) {
                for (j = 0; j < p; j++)
                    scanf("%d", &b[idx][j]);
    }
    for (idx = 0; idx < n; idx++) {
                for (j = 0; j < p; j++) {
                    c[idx][j] = 0;
                    for (k = 0; k < m; k++)
                        c[idx][j] += a[idx][k] * b[k][j];
                }
    }
    for (idx = 0; idx < n; idx++) {
                for (j = 0; j < p; j++)
                    printf("%d ", c[idx][j]);
        printf("\n");
    }
    return 0;
}
