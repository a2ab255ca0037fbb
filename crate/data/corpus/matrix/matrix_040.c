/* transpose */
int main()
{
    int r, c, a[50][50], b[50][50];
    int idx, j;
    scanf("%d %d", &r, &c);
    for (idx = 0; idx < r; idx++) {
                for (j = 0; j < c; j++)
                    scanf("%d", &a[idx][j]);
    }
    for (idx = 0; idx < r; idx++) {
                for (j = 0; j < c; j++)
                    b[j][idx] = a[idx][j];
    }
    for (idx = 0; idx < c; idx++) {
                for (j = 0; j < r; j++)
                    printf("%d ", b[idx][j]);
        printf("\n");
    }
    return 0;
}
