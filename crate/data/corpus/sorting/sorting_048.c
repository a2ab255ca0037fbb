int tmp2[100000];

void merge_sort(int *nums, int lo, int hi)
{
    int mid, p, col, k;
    if (hi - lo < 2)
        return;
    mid = (lo + hi) / 2;
    merge_sort(nums, lo, mid);
    merge_sort(nums, mid, hi);
    p = lo;
    col = mid;
    k = lo;
    while (p < mid && col < hi) {
        if (nums[p] <= nums[col])
            tmp2[k++] = nums[p++];
        else
            tmp2[k++] = nums[col++];
    }
    while (p < mid)
        tmp2[k++] = nums[p++];
    while (col < hi)
        tmp2[k++] = nums[col++];
    for (k = lo; k < hi; k++)
        nums[k] = tmp2[k];
}

int main()
{
    int n, nums[100000];
    int p;
    scanf("%d", &n);
    for (p = 0; p < n; p++) {
        scanf("%d", &nums[p]);
    }
    merge_sort(nums, 0, n);
    for (p = 0; p < n; p++) {
        printf("%d ", nums[p]);
    }
    printf("\n");
    return 0;
}
