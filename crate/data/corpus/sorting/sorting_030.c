// selection sort
int main()
{
    int num, nums[1000], mi;
    int temp;
    int i, q;
    scanf("%d", &num);
    for (i = 0; i < num; i++)
        scanf("%d", &nums[i]);
    for (i = 0; i < num - 1; i++) {
        mi = i;
                for (q = i + 1; q < num; q++) {
                    if (nums[q] < nums[mi])
                    mi = q;
                }
        if (mi != i) {
                    temp = nums[i];
                    nums[i] = nums[mi];
                    nums[mi] = temp;
                }
    }
    for (i = 0; i < num; i++)
        printf("%d ", nums[i]);
    printf("\n");
    return 0;
}
