int m1[100][100], m2[100][100], res[100][100];

int main()
{
    int n, m, p, k, q, l;
    scanf("%d %d %d", &n, &m, &p);
    for (k = 0; k < n; k++) {
                for (q = 0; q < m; q++)
                    scanf("%d", &m1[k][q]);
    }
    for (k = 0; k < m; k++) {
                for (q = 0; q < p; q++)
                    scanf("%d", &m2[k][q]);
    }
    for (k = 0; k < n; k++) {
                for (q = 0; q < p; q++) {
                    res[k][q] = 0;
                    for (l = 0; l < m; l++)
                        res[k][q] += m1[k][l] * m2[l][q];
                }
    }
    for (k = 0; k < n; k++) {
                for (q = 0; q < p; q++)
                    printf("%d ", res[k][q]);
        printf("\n");
    }
    return 0;
}
