/* print a matrix in spiral order */
int a[50][50];

int main()
{
    int r, c, top, bottom, left, right, i, j;
    scanf("%d %d", &r, &c);
    for (i = 0; i < r; i++)
        for (j = 0; j < c; j++)
            scanf("%d", &a[i][j]);
    top = 0;
    bottom = r - 1;
    left = 0;
    right = c - 1;
    while (top <= bottom && left <= right) {
        for (j = left; j <= right; j++)
            printf("%d ", a[top][j]);
        top++;
        for (i = top; i <= bottom; i++)
            printf("%d ", a[i][right]);
        right--;
        if (top <= bottom) {
            for (j = right; j >= left; j--)
                printf("%d ", a[bottom][j]);
            bottom--;
        }
        if (left <= right) {
            for (i = bottom; i >= top; i--)
                printf("%d ", a[i][left]);
            left++;
        }
    }
    return 0;
}
