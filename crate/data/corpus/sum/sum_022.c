int main()
{
    int num, k, nums[200], c = 0;
    int i, col;
    scanf("%d %d", &num, &k);
    for (i = 0; i < num; i++) {
        scanf("%d", &nums[i]);
    }
    for (i = 0; i < num; i++) {
                for (col = i + 1; col < num; col++) {
                    if (nums[i] + nums[col] == k)
                    c++;
                }
    }
    printf("%d\n", c);
    return 0;
}
