/* largest element of each row */
int main()
{
    int rows, cols, a[30][30], mx;
    int p, col;
    scanf("%d %d", &rows, &cols);
    for (p = 0; p < rows; p++) {
                for (col = 0; col < cols; col++)
                    scanf("%d", &a[p][col]);
    }
    for (p = 0; p < rows; p++) {
        mx = a[p][0];
                for (col = 1; col < cols; col++) {
                    if (a[p][col] > mx)
                    mx = a[p][col];
                }
        printf("%d\n", mx);
    }
    return 0;
}
