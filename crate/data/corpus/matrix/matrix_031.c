int main()
{
    int rows, cols, a[30][30], mx;
    int p, q;
    scanf("%d %d", &rows, &cols);
    for (p = 0; p < rows; p++) {
                for (q = 0; q < cols; q++)
                    scanf("%d", &a[p][q]);
    }
    for (p = 0; p < rows; p++) {
        mx = a[p][0];
                for (q = 1; q < cols; q++) {
                    if (a[p][q] > mx)
                    mx = a[p][q];
                }
        printf("%d\n", mx);
    }
    return 0;
}
