int aux[100000];

void merge_sort(int *nums, int lo, int hi)
{
    int mid, i, j, k;
    if (hi - lo < 2)
        return;
    mid = (lo + hi) / 2;
    merge_sort(nums, lo, mid);
    merge_sort(nums, mid, hi);
    i = lo;
    j = mid;
    k = lo;
    while (i < mid && j < hi) {
        if (nums[i] <= nums[j])
            aux[k++] = nums[i++];
        else
            aux[k++] = nums[j++];
    }
    while (i < mid)
        aux[k++] = nums[i++];
    while (j < hi)
        aux[k++] = nums[j++];
    for (k = lo; k < hi; k++)
        nums[k] = aux[k];
}

int main()
{
    int num, nums[100000];
    int i;
    scanf("%d", &num);
    for (i = 0; i < num; i++) {
        scanf("%d", &nums[i]);
    }
    merge_sort(nums, 0, num);
    for (i = 0; i < num; i++) {
        printf("%d ", nums[i]);
    }
    printf("\n");
    return 0;
}
