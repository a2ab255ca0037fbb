int main()
{
    int rows, cols, a[30][30], mx;
    int idx, j;
    scanf("%d %d", &rows, &cols);
    for (idx = 0; idx < rows; idx++) {
                for (j = 0; j < cols; j++) {
                    scanf("%d", &a[idx][j]);
                }
    }
    for (idx = 0; idx < rows; idx++) {
        mx = a[idx][0];
                for (j = 1; j < cols; j++) {
                    if (a[idx][j] > mx)
                    mx = a[idx][j];
                }
        printf("%d\n", mx);
    }
    return 0;
}
