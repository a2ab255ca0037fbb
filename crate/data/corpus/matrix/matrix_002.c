int main()
{
    int rows, cols, g[50][50], h[50][50];
    int p, j;
    scanf("%d %d", &rows, &cols);
    for (p = 0; p < rows; p++) {
                for (j = 0; j < cols; j++)
                    scanf("%d", &g[p][j]);
    }
    for (p = 0; p < rows; p++) {
                for (j = 0; j < cols; j++)
                    h[j][p] = g[p][j];
    }
    for (p = 0; p < cols; p++) {
                for (j = 0; j < rows; j++)
                    printf("%d ", h[p][j]);
        printf("\n");
    }
    return 0;
}
