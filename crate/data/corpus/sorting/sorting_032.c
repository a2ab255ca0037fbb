int compare(const void *a, const void *b)
{
    return *(const int *)a - *(const int *)b;
}

int main()
{
    int cnt, data[100000];
    int p;
    scanf("%d", &cnt);
    for (p = 0; p < cnt; p++) {
        scanf("%d", &data[p]);
    }
    qsort(data, cnt, sizeof(int), compare);
    for (p = 0; p < cnt; p++) {
        printf("%d ", data[p]);
    }
    printf("\n");
    return 0;
}
