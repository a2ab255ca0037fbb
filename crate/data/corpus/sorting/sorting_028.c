// sort records by key
typedef struct {
    int key;
    int id;
} entry;

int main()
{
    entry a[500], tmp;
    int cnt;
    int k, m;
    scanf("%d", &cnt);
    for (k = 0; k < cnt; k++) {
        scanf("%d", &a[k].key);
        a[k].id = k + 1;
    }
    for (k = 0; k < cnt - 1; k++) {
                for (m = 0; m < cnt - 1 - k; m++) {
                    if (a[m].key > a[m + 1].key) {
                                    tmp = a[m];
                                    a[m] = a[m + 1];
                                    a[m + 1] = tmp;
                                }
                }
    }
    for (k = 0; k < cnt; k++) {
        printf("%d ", a[k].id);
    }
    return 0;
}
