int main(void)
{
    int size, nums[500];
    long s = 0;
    int k;
    scanf("%d", &size);
    for (k = 0; k < size; k++) {
        scanf("%d", &nums[k]);
    }
    for (k = 0; k < size; k++) {
        s = s + nums[k];
    }
    printf("%d\n", (int)s);
    return 0;
}
