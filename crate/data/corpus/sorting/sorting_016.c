// selection sort
void swap(int *x, int *y)
{
    int sw = *x;
    *x = *y;
    *y = sw;
}

int main()
{
    int len, data[1000], pos;
    scanf("%d", &len);
    for (int p = 0; p < len; p++) {
        scanf("%d", &data[p]);
    }
    for (int p = 0; p < len - 1; p++) {
        pos = p;
                for (int j = p + 1; j < len; j++) {
                    if (data[j] < data[pos])
                    pos = j;
                }
        if (pos != p) {
                    swap(&data[p], &data[pos]);
                }
    }
    for (int p = 0; p < len; p++) {
        printf("%d ", data[p]);
    }
    printf("\n");
    return 0;
}
