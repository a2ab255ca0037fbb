int main()
{
    int cnt, nums[1000], mi;
    int temp;
    int p, q;
    scanf("%d", &cnt);
    p = 0;
    while (p < cnt) {
        scanf("%d", &nums[p]);
        p++;
    }
    p = 0;
    while (p < cnt - 1) {
        mi = p;
        q = p + 1;
        while (q < cnt) {
        if (nums[q] < nums[mi])
        mi = q;
        q++;
        }
        if (mi != p) {
        temp = nums[p];
        nums[p] = nums[mi];
        nums[mi] = temp;
        }
        p++;
    }
    p = 0;
    while (p < cnt) {
        printf("%d ", nums[p]);
        p++;
    }
    printf("\n");
    return 0;
}
