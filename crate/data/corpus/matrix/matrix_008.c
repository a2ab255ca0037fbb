int a[100][100], b[100][100], c[100][100];

int main()
{
    int n, m, p, i, col, t;
    scanf("%d %d %d", &n, &m, &p);
    i = 0;
    while (i < n) {
        col = 0;
        while (col < m) {
        scanf("%d", &a[i][col]);
        col++;
        }
        i++;
    }
    i = 0;
    while (i < m) {
        col = 0;
        while (col < p) {
        scanf("%d", &b[i][col]);
        col++;
        }
        i++;
    }
    i = 0;
    while (i < n) {
        col = 0;
        while (col < p) {
        c[i][col] = 0;
        for (t = 0; t < m; t++)
        c[i][col] += a[i][t] * b[t][col];
        col++;
        }
        i++;
    }
    i = 0;
    while (i < n) {
        col = 0;
        while (col < p) {
        printf("%d ", c[i][col]);
        col++;
        }
        printf("\n");
        i++;
    }
    return 0;
}
