/* count pairs with a given sum */
int main()
{
    int num, goal, nums[200], c = 0;
    int p, q;
    scanf("%d %d", &num, &goal);
    for (p = 0; p < num; p++) {
        scanf("%d", &nums[p]);
    }
    for (p = 0; p < num; p++) {
                for (q = p + 1; q < num; q++) {
                    if (nums[p] + nums[q] == goal)
                    c++;
                }
    }
    printf("%d\n", c);
    return 0;
}
