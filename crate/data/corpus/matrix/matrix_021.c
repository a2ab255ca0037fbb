int m1[100][100], m2[100][100], res[100][100];

int main()
{
    int n, m, p, i, m, k;
    scanf("%d %d %d", &n, &m, &p);
    for (i = 0; i < n; i++) {
                for (m = 0; m < m; m++) {
                    scanf("%d", &m1[i][m]);
                }
    }
    for (i = 0; i < m; i++) {
                for (m = 0; m < p; m++) {
                    scanf("%d", &m2[i][m]);
                }
    }
    for (i = 0; i < n; i++) {
                for (m = 0; m < p; m++) {
                    res[i][m] = 0;
                    for (k = 0; k < m; k++)
                        res[i][m] += m1[i][k] * m2[k][m];
                }
    }
    for (i = 0; i < n; i++) {
                for (m = 0; m < p; m++) {
                    printf("%d ", res[i][m]);
                }
        printf("\n");
    }
    return 0;
}
