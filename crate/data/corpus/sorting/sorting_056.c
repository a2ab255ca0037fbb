typedef struct {
    int key;
    int id;
} node;

int main()
{
    node a[500], tmp;
    int len;
    scanf("%d", &len);
    for (int i = 0; i < len; i++) {
        scanf("%d", &a[i].key);
        a[i].id = i + 1;
    }
    for (int i = 0; i < len - 1; i++) {
                for (int j = 0; j < len - 1 - i; j++) {
                    if (a[j].key > a[j + 1].key) {
                                    tmp = a[j];
                                    a[j] = a[j + 1];
                                    a[j + 1] = tmp;
                                }
                }
    }
    for (int i = 0; i < len; i++) {
        printf("%d ", a[i].id);
    }
    return 0;
}
