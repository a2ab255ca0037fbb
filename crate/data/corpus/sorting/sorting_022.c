/* bubble sort */
int main()
{
    int n, nums[1000];
    int t;
    int i, j;
    scanf("%d", &n);
    i = 0;
    while (i < n) {
        scanf("%d", &nums[i]);
        i++;
    }
    i = 0;
    while (i < n - 1) {
        j = 0;
        while (j < n - 1 - i) {
        if (nums[j] > nums[j + 1]) {
        t = nums[j];
        nums[j] = nums[j + 1];
        nums[j + 1] = t;
        }
        j++;
        }
        i++;
    }
    i = 0;
    while (i < n) {
        printf("%d ", nums[i]);
        i++;
    }
    printf("\n");
    return 0;
}
