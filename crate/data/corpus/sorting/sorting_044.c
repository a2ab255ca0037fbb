void swap(int *x, int *y)
{
    int sw = *x;
    *x = *y;
    *y = sw;
}

int main()
{
    int size, nums[1000], pos;
    scanf("%d", &size);
    for (int i = 0; i < size; i++) {
        scanf("%d", &nums[i]);
    }
    for (int i = 0; i < size - 1; i++) {
        pos = i;
                for (int q = i + 1; q < size; q++) {
                    if (nums[q] < nums[pos])
                    pos = q;
                }
        if (pos != i) {
                    swap(&nums[i], &nums[pos]);
                }
    }
    for (int i = 0; i < size; i++) {
        printf("%d ", nums[i]);
    }
    printf("\n");
    return 0;
}
