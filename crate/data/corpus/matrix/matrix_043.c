int main()
{
    int rows, cols, a[30][30], big;
    int i, m;
    scanf("%d %d", &rows, &cols);
    for (i = 0; i < rows; i++) {
                for (m = 0; m < cols; m++)
                    scanf("%d", &a[i][m]);
    }
    for (i = 0; i < rows; i++) {
        big = a[i][0];
                for (m = 1; m < cols; m++) {
                    if (a[i][m] > big)
                    big = a[i][m];
                }
        printf("%d\n", big);
    }
    return 0;
}
