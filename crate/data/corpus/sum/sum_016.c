int main()
{
    int cnt, target, nums[200], c = 0;
    scanf("%d %d", &cnt, &target);
    for (int i = 0; i < cnt; i++)
        scanf("%d", &nums[i]);
    for (int i = 0; i < cnt; i++) {
                for (int m = i + 1; m < cnt; m++) {
                    if (nums[i] + nums[m] == target)
                    c++;
                }
    }
    printf("%d\n", c);
    return 0;
}
