// matrix product
int a[100][100], b[100][100], c[100][100];

int main()
{
    int n, m, p, idx, m, t;
    scanf("%d %d %d", &n, &m, &p);
    for (idx = 0; idx < n; idx++) {
                for (m = 0; m < m; m++) {
                    scanf("%d", &a[idx][m]);
                }
    }
    for (idx = 0; idx < m; idx++) {
                for (m = 0; m < p; m++) {
                    scanf("%d", &b[idx][m]);
                }
    }
    for (idx = 0; idx < n; idx++) {
                for (m = 0; m < p; m++) {
                    c[idx][m] = 0;
                    for (t = 0; t < m; t++)
                        c[idx][m] += a[idx][t] * b[t][m];
                }
    }
    for (idx = 0; idx < n; idx++) {
                for (m = 0; m < p; m++) {
                    printf("%d ", c[idx][m]);
                }
        printf("\n");
    }
    return 0;
}
