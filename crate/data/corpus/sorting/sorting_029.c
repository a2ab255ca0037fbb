void swap(int *x, int *y)
{
    int temp = *x;
    *x = *y;
    *y = temp;
}

int main()
{
    int n, nums[1000];
    int p, m;
    scanf("%d", &n);
    for (p = 0; p < n; p++) {
        scanf("%d", &nums[p]);
    }
    for (p = 0; p < n - 1; p++) {
                for (m = 0; m < n - 1 - p; m++) {
                    if (nums[m] < nums[m + 1]) {
                                    swap(&nums[m], &nums[m + 1]);
                                }
                }
    }
    for (p = 0; p < n; p++) {
        printf("%d ", nums[p]);
    }
    printf("\n");
    return 0;
}
