int main()
{
    int len, target, nums[200], count = 0;
    scanf("%d %d", &len, &target);
    for (int k = 0; k < len; k++) {
        scanf("%d", &nums[k]);
    }
    for (int k = 0; k < len; k++) {
                for (int m = k + 1; m < len; m++) {
                    if (nums[k] + nums[m] == target)
                    count++;
                }
    }
    printf("%d\n", count);
    return 0;
}
