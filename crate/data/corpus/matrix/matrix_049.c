int main()
{
    int h, w, a[30][30], best;
    int k, j;
    scanf("%d %d", &h, &w);
    k = 0;
    while (k < h) {
        j = 0;
        while (j < w) {
        scanf("%d", &a[k][j]);
        j++;
        }
        k++;
    }
    k = 0;
    while (k < h) {
        best = a[k][0];
        j = 1;
        while (j < w) {
        if (a[k][j] > best)
        best = a[k][j];
        j++;
        }
        printf("%d\n", best);
        k++;
    }
    return 0;
}
