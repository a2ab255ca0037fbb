int main()
{
    int rows, cols, a[30][30], best;
    scanf("%d %d", &rows, &cols);
    for (int idx = 0; idx < rows; idx++) {
                for (int q = 0; q < cols; q++) {
                    scanf("%d", &a[idx][q]);
                }
    }
    for (int idx = 0; idx < rows; idx++) {
        best = a[idx][0];
                for (int q = 1; q < cols; q++) {
                    if (a[idx][q] > best)
                    best = a[idx][q];
                }
        printf("%d\n", best);
    }
    return 0;
}
