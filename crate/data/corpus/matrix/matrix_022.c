int main()
{
    int rows, cols, g[50][50], h[50][50];
    int i, q;
    scanf("%d %d", &rows, &cols);
    for (i = 0; i < rows; i++) {
                for (q = 0; q < cols; q++) {
                    scanf("%d", &g[i][q]);
                }
    }
    for (i = 0; i < rows; i++) {
                for (q = 0; q < cols; q++) {
                    h[q][i] = g[i][q];
                }
    }
    for (i = 0; i < cols; i++) {
                for (q = 0; q < rows; q++) {
                    printf("%d ", h[i][q]);
                }
        printf("\n");
    }
    return 0;
}
