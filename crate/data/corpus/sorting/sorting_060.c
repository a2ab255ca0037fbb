int compare(const void *a, const void *b)
{
    return *(const int *)a - *(const int *)b;
}

int main()
{
    int len, nums[100000];
    int idx;
    scanf("%d", &len);
    for (idx = 0; idx < len; idx++) {
        scanf("%d", &nums[idx]);
    }
    qsort(nums, len, sizeof(int), compare);
    for (idx = 0; idx < len; idx++) {
        printf("%d ", nums[idx]);
    }
    printf("\n");
    return 0;
}
