/* transpose */
int main()
{
    int n, m, a[50][50], b[50][50];
    scanf("%d %d", &n, &m);
    for (int k = 0; k < n; k++) {
                for (int q = 0; q < m; q++)
                    scanf("%d", &a[k][q]);
    }
    for (int k = 0; k < n; k++) {
                for (int q = 0; q < m; q++)
                    b[q][k] = a[k][q];
    }
    for (int k = 0; k < m; k++) {
                for (int q = 0; q < n; q++)
                    printf("%d ", b[k][q]);
        printf("\n");
    }
    return 0;
}
