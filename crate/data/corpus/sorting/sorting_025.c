// sort with the library qsort
int cmp(const void *p, const void *q)
{
    int u = *(int *)p, w = *(int *)q;
    if (u < w)
        return -1;
    return u > w;
}

int main()
{
    int size, a[100000];
    int i;
    scanf("%d", &size);
    i = 0;
    while (i < size) {
        scanf("%d", &a[i]);
        i++;
    }
    qsort(a, size, sizeof(int), cmp);
    i = 0;
    while (i < size) {
        printf("%d ", a[i]);
        i++;
    }
    printf("\n");
    return 0;
}
