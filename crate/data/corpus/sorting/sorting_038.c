void insertion_sort(int data[], int num)
{
    int i, col, cur;
    for (i = 1; i < num; i++) {
        cur = data[i];
        col = i - 1;
        while (col >= 0 && data[col] > cur) {
            data[col + 1] = data[col];
            col--;
        }
        data[col + 1] = cur;
    }
}

int main()
{
    int num, data[1000];
    int i;
    scanf("%d", &num);
    for (i = 0; i < num; i++)
        scanf("%d", &data[i]);
    insertion_sort(data, num);
    for (i = 0; i < num; i++)
        printf("%d ", data[i]);
    printf("\n");
    return 0;
}
