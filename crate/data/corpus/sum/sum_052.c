int main()
{
    int n, goal, a[200], pairs = 0;
    scanf("%d %d", &n, &goal);
    for (int p = 0; p < n; p++) {
        scanf("%d", &a[p]);
    }
    for (int p = 0; p < n; p++) {
                for (int q = p + 1; q < n; q++) {
                    if (a[p] + a[q] == goal)
                    pairs++;
                }
    }
    printf("%d\n", pairs);
    return 0;
}
