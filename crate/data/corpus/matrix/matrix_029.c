int main()
{
    int r, c;
    int a[20][20], b[20][20], sum[20][20];
    scanf("%d%d", &r, &c);
    for (int p = 0; p < r; p++) {
                for (int j = 0; j < c; j++) {
                    scanf("%d", &a[p][j]);
                }
    }
    for (int p = 0; p < r; p++) {
                for (int j = 0; j < c; j++) {
                    scanf("%d", &b[p][j]);
                }
    }
    for (int p = 0; p < r; p++) {
                for (int j = 0; j < c; j++) {
                    sum[p][j] = a[p][j] + b[p][j];
                }
    }
    for (int p = 0; p < r; p++) {
                for (int j = 0; j < c; j++) {
                    printf("%d ", sum[p][j]);
                }
        printf("\n");
    }
    return 0;
}
