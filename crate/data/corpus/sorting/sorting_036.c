int main()
{
    int size, nums[1000];
    int t;
    int k, q;
    scanf("%d", &size);
    k = 0;
    while (k < size) {
        scanf("%d", &nums[k]);
        k++;
    }
    k = 0;
    while (k < size - 1) {
        q = 0;
        while (q < size - 1 - k) {
        if (nums[q] > nums[q + 1]) {
        t = nums[q];
        nums[q] = nums[q + 1];
        nums[q + 1] = t;
        }
        q++;
        }
        k++;
    }
    k = 0;
    while (k < size) {
        printf("%d ", nums[k]);
        k++;
    }
    printf("\n");
    return 0;
}
