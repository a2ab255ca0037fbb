typedef struct {
    int key;
    int id;
} pair;

int main()
{
    pair v[500], tmp;
    int num;
    scanf("%d", &num);
    for (int k = 0; k < num; k++) {
        scanf("%d", &v[k].key);
        v[k].id = k + 1;
    }
    for (int k = 0; k < num - 1; k++) {
                for (int q = 0; q < num - 1 - k; q++) {
                    if (v[q].key > v[q + 1].key) {
                                    tmp = v[q];
                                    v[q] = v[q + 1];
                                    v[q + 1] = tmp;
                                }
                }
    }
    for (int k = 0; k < num; k++)
        printf("%d ", v[k].id);
    return 0;
}
