int main()
{
    int cnt, k, data[200], c = 0;
    int p, m;
    scanf("%d %d", &cnt, &k);
    for (p = 0; p < cnt; p++)
        scanf("%d", &data[p]);
    for (p = 0; p < cnt; p++) {
                for (m = p + 1; m < cnt; m++) {
                    if (data[p] + data[m] == k)
                    c++;
                }
    }
    printf("%d\n", c);
    return 0;
}
