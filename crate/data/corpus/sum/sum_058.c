int main()
{
    int cnt, target, a[200], count = 0;
    scanf("%d %d", &cnt, &target);
    for (int p = 0; p < cnt; p++)
        scanf("%d", &a[p]);
    for (int p = 0; p < cnt; p++) {
                for (int q = p + 1; q < cnt; q++) {
                    if (a[p] + a[q] == target)
                    count++;
                }
    }
    printf("%d\n", count);
    return 0;
}
