int main()
{
    int len, nums[1000];
    int temp;
    int i, m;
    scanf("%d", &len);
    for (i = 0; i < len; i++) {
        scanf("%d", &nums[i]);
    }
    for (i = 0; i < len - 1; i++) {
                for (m = 0; m < len - 1 - i; m++) {
                    if (nums[m] > nums[m + 1]) {
                                    temp = nums[m];
                                    nums[m] = nums[m + 1];
                                    nums[m + 1] = temp;
                                }
                }
    }
    for (i = 0; i < len; i++) {
        printf("%d ", nums[i]);
    }
    printf("\n");
    return 0;
}
