typedef struct {
    int key;
    int id;
} entry;

int main()
{
    entry v[500], t;
    int len;
    int k, q;
    scanf("%d", &len);
    for (k = 0; k < len; k++) {
        scanf("%d", &v[k].key);
        v[k].id = k + 1;
    }
    for (k = 0; k < len - 1; k++) {
                for (q = 0; q < len - 1 - k; q++) {
                    if (v[q].key > v[q + 1].key) {
                                    t = v[q];
                                    v[q] = v[q + 1];
                                    v[q + 1] = t;
                                }
                }
    }
    for (k = 0; k < len; k++) {
        printf("%d ", v[k].id);
    }
    return 0;
}
