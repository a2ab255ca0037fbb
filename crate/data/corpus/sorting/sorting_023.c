// selection sort
void swap(int *x, int *y)
{
    int t = *x;
    *x = *y;
    *y = t;
}

int main()
{
    int n, data[1000], min;
    int i, q;
    scanf("%d", &n);
    i = 0;
    while (i < n) {
        scanf("%d", &data[i]);
        i++;
    }
    i = 0;
    while (i < n - 1) {
        min = i;
        q = i + 1;
        while (q < n) {
        if (data[q] < data[min])
        min = q;
        q++;
        }
        if (min != i)
        swap(&data[i], &data[min]);
        i++;
    }
    i = 0;
    while (i < n) {
        printf("%d ", data[i]);
        i++;
    }
    printf("\n");
    return 0;
}
