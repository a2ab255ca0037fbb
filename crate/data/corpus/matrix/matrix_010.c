int main()
{
    int r, c;
    int a[20][20], b[20][20], sum[20][20];
    int p, j;
    scanf("%d%d", &r, &c);
    p = 0;
    while (p < r) {
        j = 0;
        while (j < c) {
        scanf("%d", &a[p][j]);
        j++;
        }
        p++;
    }
    p = 0;
    while (p < r) {
        j = 0;
        while (j < c) {
        scanf("%d", &b[p][j]);
        j++;
        }
        p++;
    }
    p = 0;
    while (p < r) {
        j = 0;
        while (j < c) {
        sum[p][j] = a[p][j] + b[p][j];
        j++;
        }
        p++;
    }
    p = 0;
    while (p < r) {
        j = 0;
        while (j < c) {
        printf("%d ", sum[p][j]);
        j++;
        }
        printf("\n");
        p++;
    }
    return 0;
}
