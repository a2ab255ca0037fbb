int main()
{
    int r, c, a[30][30], mx;
    int i, col;
    scanf("%d %d", &r, &c);
    for (i = 0; i < r; i++) {
                for (col = 0; col < c; col++) {
                    scanf("%d", &a[i][col]);
                }
    }
    for (i = 0; i < r; i++) {
        mx = a[i][0];
                for (col = 1; col < c; col++) {
                    if (a[i][col] > mx)
                    mx = a[i][col];
                }
        printf("%d\n", mx);
    }
    return 0;
}
