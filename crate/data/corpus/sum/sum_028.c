int main()
{
    int size, k, v[200], c = 0;
    int idx, j;
    scanf("%d %d", &size, &k);
    for (idx = 0; idx < size; idx++) {
        scanf("%d", &v[idx]);
    }
    for (idx = 0; idx < size; idx++) {
                for (j = idx + 1; j < size; j++) {
                    if (v[idx] + v[j] == k)
                    c++;
                }
    }
    printf("%d\n", c);
    return 0;
}
