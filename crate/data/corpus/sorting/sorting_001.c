void swap(int *x, int *y)
{
    int temp = *x;
    *x = *y;
    *y = temp;
}

int main()
{
    int len, v[1000];
    scanf("%d", &len);
    for (int p = 0; p < len; p++) {
        scanf("%d", &v[p]);
    }
    for (int p = 0; p < len - 1; p++) {
                for (int col = 0; col < len - 1 - p; col++) {
                    if (v[col] < v[col + 1]) {
                                    swap(&v[col], &v[col + 1]);
                                }
                }
    }
    for (int p = 0; p < len; p++) {
        printf("%d ", v[p]);
    }
    printf("\n");
    return 0;
}
